// Command line driver. Exit codes: 0 ok, 1 usage, 2 parse, 3 computation, 4 validation.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lgfan/problem.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kCompute = 3, kInvalid = 4 };

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool looks_inline(const std::string& s) {
  auto p = s.find_first_not_of(" \t");
  return p != std::string::npos && (s[p] == '[' || s.compare(p, 4, "rows") == 0);
}

int check_fan(const std::string& text, const std::string& emit) {
  lgfan::FanDocument doc;
  try {
    doc = lgfan::parse_document(text);
  } catch (const std::exception& e) {
    std::cerr << "lgfan: " << e.what() << "\n";
    return kParse;
  }
  lgfan::FanReport r = lgfan::check_document(doc);
  if (emit == "json") {
    nlohmann::ordered_json j;
    j["mode"] = "check-fan";
    j["ok"] = r.ok;
    j["axiom"] = r.axiom;
    j["message"] = r.message;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "mode: check-fan\n"
              << "cones: " << doc.cones.size() << "\n"
              << (r.ok ? "validation: ok" : "validation: failed (axiom " + std::to_string(r.axiom) + "): " + r.message)
              << "\n";
  }
  return r.ok ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global and local Groebner fans with exact arithmetic"};
  app.set_version_flag("--version", lgfan::kToolVersion);
  std::string mode, input = "-", subspace, base_point, homogenization, region, emit = "json", output;
  int threads = 1;
  bool validate = false;
  app.add_option("--mode", mode, "global-fan | local-fan | normal-fan | compare-initials | check-fan");
  app.add_option("--input", input, "problem file, or a fan document for check-fan ('-' for stdin)");
  app.add_option("--subspace", subspace, "subspace rows inline ([[..],..]) or a file holding them");
  app.add_option("--base-point", base_point, "base point, e.g. [1/2,0]");
  app.add_option("--homogenization", homogenization, "auto | alpha[:a1,a2,..] | h01 | h11 | double");
  app.add_option("--region", region, "uloc | wloc | wglob | positive | full");
  app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--emit", emit, "json | summary")->check(CLI::IsMember({"json", "summary"}));
  app.add_option("-o,--output", output, "write the result here instead of stdout");
  app.add_flag("--validate", validate, "validate the fan in every mode");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::string text;
  try {
    text = slurp(input);
  } catch (const std::exception& e) {
    std::cerr << "lgfan: " << e.what() << "\n";
    return kUsage;
  }
  if (mode == "check-fan") return check_fan(text, emit);

  lgfan::ProblemSpec spec;
  try {
    spec = lgfan::parse_problem(text);
    if (!mode.empty()) spec.mode = lgfan::parse_mode(mode);
    if (!subspace.empty()) spec.subspace = lgfan::parse_matrix(looks_inline(subspace) ? subspace : slurp(subspace));
    if (!base_point.empty()) spec.base_point = lgfan::parse_vector(base_point);
    if (!homogenization.empty()) spec.homogenization = lgfan::parse_homogenization(homogenization);
    if (!region.empty()) spec.region = lgfan::parse_region(region);
  } catch (const lgfan::ParseError& e) {
    std::cerr << "lgfan: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "lgfan: " << e.what() << "\n";
    return kUsage;
  }
  if (spec.mode == lgfan::Mode::check_fan) return check_fan(text, emit);

  lgfan::FanDocument doc;
  try {
    doc = lgfan::run(spec, {threads, validate});
  } catch (const std::exception& e) {
    std::cerr << "lgfan: computation failed: " << e.what() << "\n";
    return kCompute;
  }
  const std::string out = emit == "json" ? lgfan::emit_json(doc) : lgfan::emit_summary(doc);
  if (output.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      std::cerr << "lgfan: cannot write '" << output << "'\n";
      return kUsage;
    }
    f << out;
  }
  if (doc.validation && !doc.validation->ok) {
    std::cerr << "lgfan: fan validation failed: " << doc.validation->message << "\n";
    return kInvalid;
  }
  return kOk;
}
