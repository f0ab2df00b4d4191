// cplanar: command-line front end.
//
// Exit codes: 0 CPlanar / ok, 1 NotCPlanar / failed check, 2 Unsupported or oracle
// limit, 3 invalid input.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cplanar/bench.hpp"
#include "cplanar/decide.hpp"
#include "cplanar/generator.hpp"
#include "cplanar/io.hpp"
#include "cplanar/oracle.hpp"
#include "cplanar/render.hpp"

using namespace cplanar;

namespace {

constexpr int kExitCPlanar = 0;
constexpr int kExitNotCPlanar = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitInvalid = 3;

int exit_code(Status s) {
  switch (s) {
    case Status::CPlanar: return kExitCPlanar;
    case Status::NotCPlanar: return kExitNotCPlanar;
    case Status::Unsupported: return kExitUnsupported;
  }
  return kExitInvalid;
}

void print_verdict(const Verdict& v) {
  std::printf("verdict: %s\n", status_name(v.status));
  if (v.reason != Reason::None) std::printf("reason: %s\n", reason_name(v.reason));
  if (!v.detail.empty()) std::printf("detail: %s\n", v.detail.c_str());
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    const ComponentVerdict& cv = v.components[i];
    const ComponentStats& st = cv.stats;
    std::printf("component %zu: %s (%s) n=%d m=%d contractions=%d loops=%d subdivisions=%d extremes=%d "
                "elimination=%d forest=%d\n",
                i, status_name(cv.status), reason_name(cv.reason), st.vertices, st.edges, st.contractions,
                st.loops_deleted, st.subdivisions, st.sinks_sources, st.elimination_chords, st.forest_chords);
  }
}

int cmd_validate(const std::string& path) {
  const CGraph cg = read_instance(path);
  if (cg.c == 2) {
    std::printf("Unsupported: instances with two clusters are outside the supported class\n");
    return kExitUnsupported;
  }
  validate_cyclic(cg);
  std::printf("ok: c=%d vertices=%d edges=%d faces=%d\n", cg.c, cg.map.live_vertex_count(),
              cg.map.live_edge_count(), cg.map.face_count());
  return 0;
}

int cmd_test(const std::string& path, const std::string& cert_path, const std::string& rule) {
  const CGraph cg = read_instance(path);
  DecideOptions opts;
  if (rule == "conjunctive") opts.pole_rule = PoleRule::Conjunctive;
  else if (rule == "optional") opts.pole_rule = PoleRule::Optional;
  const Verdict v = decide(cg, opts);
  print_verdict(v);
  if (!cert_path.empty()) write_json(cert_path, certificate_to_json(cg, v));
  return exit_code(v.status);
}

int cmd_gen(GenOptions opt, const std::string& family, const std::string& out) {
  const CGraph cg = family == "fan" ? generate_fan(opt) : generate(opt);
  if (out.empty() || out == "-") std::cout << instance_to_json(cg).dump(1) << '\n';
  else write_instance(out, cg);
  return 0;
}

int cmd_oracle(const std::string& path, const std::vector<long>& limits) {
  const CGraph cg = read_instance(path);
  OracleLimits lim;
  if (limits.size() >= 1) lim.max_vertices = static_cast<int>(limits[0]);
  if (limits.size() >= 2) lim.max_nodes = limits[1];
  const Verdict v = decide(cg, {.build_certificate = false});
  const OracleResult r = oracle_decide(cg, lim);
  std::printf("decide: %s\noracle: %s (%ld nodes)\n", status_name(v.status), oracle_status_name(r.status), r.nodes);
  if (r.status == OracleStatus::LimitExceeded) {
    std::printf("agreement: unknown (%s)\n", r.detail.c_str());
    return kExitUnsupported;
  }
  if (v.status == Status::Unsupported) {
    std::printf("agreement: not applicable (decide unsupported)\n");
    return kExitUnsupported;
  }
  const bool agree = (v.status == Status::CPlanar) == (r.status == OracleStatus::CPlanar);
  std::printf("agreement: %s\n", agree ? "agree" : "DISAGREE");
  return agree ? 0 : kExitNotCPlanar;
}

int cmd_render(const std::string& path, const std::string& out) {
  const json j = read_json(path);
  if (!j.is_object() || j.value("verdict", "") != "CPlanar") {
    std::fprintf(stderr, "error: no certificate in %s\n", path.c_str());
    return kExitInvalid;
  }
  const Certificate cert = certificate_from_json(j);
  const std::string svg = render_svg(cert);
  const auto& map = cert.augmented.map;
  if (!rotations_match(map, extract_rotations(svg, map.vertex_slots()))) {
    std::fprintf(stderr, "error: drawing does not reproduce the rotation system\n");
    return kExitNotCPlanar;
  }
  if (out.empty() || out == "-") {
    std::cout << svg;
  } else {
    std::ofstream f(out);
    if (!f) throw Error(Errc::InvalidArgument, "cannot write " + out);
    f << svg;
  }
  return 0;
}

int cmd_verify(const std::string& path) {
  CGraph input;
  const Certificate cert = certificate_from_json(read_json(path), &input);
  const VerifyReport rep = verify_certificate(input, cert);
  if (rep.ok) {
    std::printf("certificate ok: %zu added edges\n", cert.added.size());
    return 0;
  }
  for (const std::string& f : rep.failures) std::printf("failure: %s\n", f.c_str());
  return kExitNotCPlanar;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clustered planarity of embedded cyclic clustered graphs"};
  app.require_subcommand(1);

  std::string path, out, rule = "disjunctive", family = "random";
  GenOptions gen;
  bool no_intra = false;
  std::vector<long> limits;
  BenchOptions bench;

  auto* validate = app.add_subcommand("validate", "parse and structurally validate an instance");
  validate->add_option("instance", path, "instance file")->required();

  auto* test = app.add_subcommand("test", "decide c-planarity");
  test->add_option("instance", path, "instance file")->required();
  test->add_option("--certificate", out, "write the certificate (or rejection) here");
  test->add_option("--pole-rule", rule, "conjunctive, disjunctive or optional")
      ->check(CLI::IsMember({"conjunctive", "disjunctive", "optional"}));

  auto* g = app.add_subcommand("gen", "generate a random instance");
  g->add_option("--n", gen.n, "vertex count")->required();
  g->add_option("--c", gen.c, "cluster count")->required();
  g->add_option("--seed", gen.seed, "random seed");
  g->add_option("--ops", gen.ops, "extra chord insertions (random family)");
  g->add_option("--keep-winding", gen.keep_winding, "probability of winding-neutral insertions");
  g->add_flag("--no-intra", no_intra, "forbid intra-cluster edges (random family)");
  g->add_option("--family", family, "random or fan")->check(CLI::IsMember({"random", "fan"}));
  g->add_option("-o,--output", out, "output file (default stdout)");

  auto* orc = app.add_subcommand("oracle", "cross-check decide against brute force");
  orc->add_option("instance", path, "instance file")->required();
  orc->add_option("--limits", limits, "max vertices and max search nodes")->expected(1, 2);

  auto* ren = app.add_subcommand("render", "draw a certificate as SVG");
  ren->add_option("certificate", path, "certificate file")->required();
  ren->add_option("-o,--output", out, "output SVG (default stdout)");

  auto* ben = app.add_subcommand("bench", "time decide on generated instances");
  ben->add_option("--sizes", bench.sizes, "vertex counts")->delimiter(',');
  ben->add_option("--c", bench.c, "cluster count");
  ben->add_option("--seed", bench.seed, "random seed");
  ben->add_option("--repeats", bench.repeats, "timed runs per size (median reported)");
  ben->add_option("--family", family, "random or fan")->check(CLI::IsMember({"random", "fan"}));

  auto* ver = app.add_subcommand("verify", "check a certificate file");
  ver->add_option("certificate", path, "certificate file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(path);
    if (*test) return cmd_test(path, out, rule);
    if (*g) {
      gen.intra = !no_intra;
      return cmd_gen(gen, family, out);
    }
    if (*orc) return cmd_oracle(path, limits);
    if (*ren) return cmd_render(path, out);
    if (*ben) {
      if (ben->count("--family")) bench.fan = family == "fan";
      std::cout << format_bench(run_bench(bench));
      return 0;
    }
    if (*ver) return cmd_verify(path);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  } catch (const json::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  }
  return kExitInvalid;
}
